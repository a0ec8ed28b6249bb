from .engine import FAMILIES, Bounds, CrosscheckReport, check_sample, crosscheck, sample_instance

__all__ = ["FAMILIES", "Bounds", "CrosscheckReport", "check_sample", "crosscheck", "sample_instance"]
