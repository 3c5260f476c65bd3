TOL = 1e-10
