log_level = 'INFO'
# archimedean coordinates are compared with this absolute tolerance
tolerance = 1e-9
seed = 0
# equal-degree splitting of polynomials over Fq
factor_seed = 0
