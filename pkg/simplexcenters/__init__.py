"""Centers, facial structure and counterexamples of d-simplices."""

__version__ = "0.1.0"
