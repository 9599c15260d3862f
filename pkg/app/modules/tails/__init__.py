# Módulo de cotas de colas sobre ceros
