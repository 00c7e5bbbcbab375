"""Exact and asymptotic upper bounds on A(n,d) from the Delsarte linear program."""

__version__ = "0.1.0"
