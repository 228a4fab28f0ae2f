"""
Módulo de configuração do swarm-enhance.
Busca valores padrão em arquivos .env seguindo a hierarquia:
1. Raiz do projeto
2. Subpastas
3. find_dotenv() do python-dotenv

A precedência final é: flag da CLI > ambiente/.env > padrão embutido.
"""
import os
from pathlib import Path
from typing import Dict, Optional, Any
from dotenv import load_dotenv, find_dotenv
from swarm_enhance.logger import EnhanceLogger

logger = EnhanceLogger.get_logger("swarm_enhance.config")

# Padrões embutidos do enxame e do realce
BUILTIN_SWARM_DEFAULTS = {
    "population": 20,
    "max_iters": 1000,
    "reorg_period": 10,
    "chick_follow_rooster": 0.4,
    "fl_min": 0.4,
    "fl_max": 1.0,
    "s_min": 0.4,
    "s_max": 0.9,
}

BUILTIN_ENHANCE_DEFAULTS = {
    "lambda": 5.0,
    "gamma": 50000.0,
    "optimizer": "icso",
}

_SWARM_ENV = {
    "population": ("SWARM_POPULATION", int),
    "max_iters": ("SWARM_ITERS", int),
    "reorg_period": ("SWARM_REORG_PERIOD", int),
    "chick_follow_rooster": ("SWARM_F", float),
    "fl_min": ("SWARM_FL_MIN", float),
    "fl_max": ("SWARM_FL_MAX", float),
    "s_min": ("SWARM_S_MIN", float),
    "s_max": ("SWARM_S_MAX", float),
}

_ENHANCE_ENV = {
    "lambda": ("ENHANCE_LAMBDA", float),
    "gamma": ("ENHANCE_GAMMA", float),
    "optimizer": ("ENHANCE_OPTIMIZER", str),
}


class ConfigManager:
    """Gerenciador de configurações do swarm-enhance"""

    def __init__(self, project_root: Optional[str] = None):
        """
        Inicializa o gerenciador de configurações.

        Args:
            project_root: Caminho para a raiz do projeto. Se None, usa o diretório do pacote.
        """
        if project_root:
            self.project_root = Path(project_root)
        else:
            self.project_root = Path(__file__).parent.parent

        self._env_loaded = False
        self._config_cache = {}

    def load_env_config(self) -> bool:
        """
        Carrega configurações de arquivos .env seguindo a hierarquia:
        1. Raiz do projeto
        2. Subpastas

        Returns:
            bool: True se encontrou e carregou um arquivo .env, False caso contrário
        """
        if self._env_loaded:
            return True

        root_env = self.project_root / '.env'
        if root_env.exists():
            logger.info(f"Carregando configurações de {root_env}")
            load_dotenv(root_env)
            self._env_loaded = True
            return True

        env_file = self._search_env_in_subfolders()
        if env_file:
            logger.info(f"Carregando configurações de {env_file}")
            load_dotenv(env_file)
            self._env_loaded = True
            return True

        dotenv_path = find_dotenv(usecwd=True)
        if dotenv_path:
            logger.info(f"Carregando configurações de {dotenv_path}")
            load_dotenv(dotenv_path)
            self._env_loaded = True
            return True

        logger.info("Nenhum arquivo .env encontrado; usando padrões embutidos")
        return False

    def _search_env_in_subfolders(self) -> Optional[Path]:
        """
        Busca recursivamente por arquivos .env nas subpastas do projeto.

        Returns:
            Path: Caminho para o primeiro arquivo .env encontrado, ou None
        """
        for root, dirs, files in os.walk(self.project_root):
            # Ignora pastas que não devem conter .env
            dirs[:] = [d for d in dirs if not d.startswith('.') and d not in ['__pycache__', 'node_modules', 'venv', 'env', 'examples']]

            if '.env' in files:
                env_path = Path(root) / '.env'
                logger.info(f"Arquivo .env encontrado em: {env_path}")
                return env_path

        return None

    def get_swarm_defaults(self) -> Dict[str, Any]:
        """
        Obtém os padrões do enxame (população, iterações, coeficientes).

        Returns:
            Dict: Padrões embutidos sobrescritos pelas variáveis de ambiente presentes
        """
        return self._resolve("SWARM", BUILTIN_SWARM_DEFAULTS, _SWARM_ENV)

    def get_enhance_defaults(self) -> Dict[str, Any]:
        """
        Obtém os padrões de realce (λ, γ, otimizador).

        Returns:
            Dict: Padrões embutidos sobrescritos pelas variáveis de ambiente presentes
        """
        return self._resolve("ENHANCE", BUILTIN_ENHANCE_DEFAULTS, _ENHANCE_ENV)

    def _resolve(self, key: str, builtin: Dict[str, Any], env_mapping: Dict[str, tuple]) -> Dict[str, Any]:
        self.load_env_config()

        if key in self._config_cache:
            return dict(self._config_cache[key])

        config = dict(builtin)
        for name, (env_var, cast) in env_mapping.items():
            value = os.getenv(env_var)
            if value is None or value.strip() == "":
                continue
            try:
                config[name] = cast(value.strip())
            except ValueError:
                logger.warning(f"Valor inválido em {env_var}={value!r}; mantendo padrão {config[name]!r}")

        self._config_cache[key] = config
        return dict(config)

    def clear_cache(self) -> None:
        """Descarta valores já resolvidos (útil quando o ambiente muda)."""
        self._config_cache.clear()


# Instância global do gerenciador de configurações
config_manager = ConfigManager()


def get_swarm_defaults() -> Dict[str, Any]:
    """Função utilitária para obter os padrões do enxame."""
    return config_manager.get_swarm_defaults()


def get_enhance_defaults() -> Dict[str, Any]:
    """Função utilitária para obter os padrões de realce."""
    return config_manager.get_enhance_defaults()


def load_env_config() -> bool:
    """
    Função utilitária para carregar configurações de .env

    Returns:
        bool: True se carregou com sucesso
    """
    return config_manager.load_env_config()
