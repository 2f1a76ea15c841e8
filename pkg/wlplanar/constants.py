"""This submodule contains constants used throughout the project."""

# Default Parameters ##########################################################

# dimensions the refinement engine supports
WL_DIMENSIONS = (1, 2, 3)

# Tutte iteration: stop once no coordinate moves by more than TUTTE_EPS
TUTTE_EPS = 1e-9
TUTTE_MAX_ITER = 100000
# two converged positions closer than this count as a collision
INJECTIVITY_TOL = 1e-6
# positions closer than this count as equal when compared with colors
POSITION_TOL = 1e-9
# pinned coordinates of the chosen face triple
PINNED_COORDINATES = ((0., 0.), (1., 0.), (0., 1.))
# start value of every free vertex
FREE_START = (1., 1.)

# largest graph ISOTYPE will canonize
ISOTYPE_LIMIT = 10
# largest graph the brute-force oracle accepts (env WLPLANAR_ORACLE_LIMIT)
ORACLE_LIMIT = 16
ORACLE_LIMIT_ENV = 'WLPLANAR_ORACLE_LIMIT'
# largest vertex count of the exhaustive corpus (7 takes minutes)
CORPUS_LIMIT = 7
CORPUS_DEFAULT = 6

# experiments: seed of every random relabeling, relabelings per graph
DEFAULT_SEED = 2718
RELABELINGS = 100
# largest allowed gap between the iterated and the solved Tutte embedding
SOLVE_AGREEMENT_TOL = 1e-6
