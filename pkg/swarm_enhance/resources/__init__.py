from .parameter_table import parameter_table

__all__ = ["parameter_table"]
