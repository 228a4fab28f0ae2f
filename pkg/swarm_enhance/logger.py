import logging
import os
import sys


class EnhanceLogger:
    _logger_cache = {}
    _global_handler = None

    @staticmethod
    def get_logger(name: str):
        if name in EnhanceLogger._logger_cache:
            return EnhanceLogger._logger_cache[name]
        logger = logging.getLogger(name)
        logger.setLevel(logging.INFO)
        # Adiciona apenas UM handler global para todos os loggers
        if EnhanceLogger._global_handler is None:
            EnhanceLogger.configure()
        EnhanceLogger._logger_cache[name] = logger
        return logger

    @staticmethod
    def configure(level: str = None, log_file: str = None):
        """
        (Re)instala o handler global.

        Args:
            level: Nível do handler (padrão: SWARM_ENHANCE_LOG_LEVEL ou WARNING)
            log_file: Arquivo de log (padrão: SWARM_ENHANCE_LOG_FILE; ausente = stderr)
        """
        level = level or os.getenv("SWARM_ENHANCE_LOG_LEVEL", "WARNING")
        log_file = log_file or os.getenv("SWARM_ENHANCE_LOG_FILE")

        root = logging.getLogger()
        if EnhanceLogger._global_handler is not None:
            root.removeHandler(EnhanceLogger._global_handler)
            EnhanceLogger._global_handler.close()

        if log_file:
            handler = logging.FileHandler(log_file)
        else:
            handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter('%(asctime)s %(levelname)s %(message)s'))
        handler.setLevel(getattr(logging, str(level).upper(), logging.WARNING))
        root.addHandler(handler)
        EnhanceLogger._global_handler = handler
        return handler
