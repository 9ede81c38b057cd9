"""Edge-ordered directed multigraphs and their minors."""
