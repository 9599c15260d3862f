# Módulo de la cota inferior de I(X)/X²
