"""Contact surgery toolkit: EH classes under rational contact surgery on Legendrian knots."""

__version__ = "0.1.0"
