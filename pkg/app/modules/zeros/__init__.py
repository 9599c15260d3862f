# Módulo de tablas de ceros de zeta
