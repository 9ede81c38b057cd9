"""Optimizable digraphs, the signed cocycle ordering and the flag algorithm computing alpha."""
