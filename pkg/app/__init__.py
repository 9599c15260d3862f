# Paquete principal del certificador
