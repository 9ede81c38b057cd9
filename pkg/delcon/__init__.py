"""Deletion/contraction recursion for the fully optimal spanning tree."""
