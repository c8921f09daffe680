"""Software complexity metrics from requirements manifests and source code.

Computes requirement-based complexity (RBC) from a structured SRS manifest,
five established code/cognitive complexity measures (Halstead difficulty and
effort, McCabe v(G), KLCID, CFS, CICM) from C-like source, and rank
correlations between the two views over a program corpus.
"""

__version__ = "0.1.0"
