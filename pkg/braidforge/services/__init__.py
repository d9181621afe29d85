"""Group-theory services: words, presentations, rewriting, Tietze moves, invariants."""
