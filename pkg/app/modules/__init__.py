# Módulos del sistema de certificación
