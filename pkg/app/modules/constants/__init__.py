# Módulo de constantes certificadas (B, c1, c2, c3)
