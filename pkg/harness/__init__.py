"""Instance generators, the verification driver and the example-graph search."""
