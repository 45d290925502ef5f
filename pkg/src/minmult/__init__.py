"""Exact invariants of Stanley-Reisner rings and monomial quotient algebras."""
