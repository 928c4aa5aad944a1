"""Degree-1 del Pezzo fibrations over a DVR: normal forms, monomial maps, singularities."""
