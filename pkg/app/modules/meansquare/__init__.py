# Módulo de la media cuadrática I(X)
