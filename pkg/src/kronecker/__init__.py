"""Exact computations for the wild Kronecker quivers K_n (n >= 3)."""
