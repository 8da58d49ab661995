"""Kostka polynomials and Green functions for complex reflection groups G(r,1,n)."""
