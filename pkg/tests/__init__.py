"""Test suite for the nested network workbench."""
