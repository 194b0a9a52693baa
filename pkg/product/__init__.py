"""Product networks: Cartesian products, folded powers and their laws."""

from .cartesian import MAX_PRODUCT_VERTICES, ProductGraph, cartesian_product, folded_power, nested_product
from .labels import check_labels, load_labels, save_labels
from .properties import ProductReport, commutes_by_relabeling, verify_product_properties
from .scaling import folded_scaling

__all__ = [
    "MAX_PRODUCT_VERTICES",
    "ProductGraph",
    "ProductReport",
    "cartesian_product",
    "check_labels",
    "commutes_by_relabeling",
    "folded_power",
    "folded_scaling",
    "load_labels",
    "nested_product",
    "save_labels",
    "verify_product_properties",
]
