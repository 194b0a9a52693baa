"""CLI package for the nested network workbench."""
