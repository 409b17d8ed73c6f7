"""
Configuration settings for different environments.
"""
import os

from dotenv import load_dotenv

from .workbench_utils import config as defaults

# Pick up an optional .env next to the working directory
load_dotenv()


def _env_bool(name: str, default: str) -> bool:
    return os.environ.get(name, default).lower() in ('1', 'true', 'yes')


class Config:
    """Base config class"""
    # Logging
    LOG_LEVEL = os.environ.get('LOG_LEVEL', 'INFO')

    # Irr G_lambda truncation
    TRUNC_BOXES = int(os.environ.get('QA_TRUNC_BOXES', defaults.DEFAULT_TRUNC_BOXES))
    TRUNC_DET = int(os.environ.get('QA_TRUNC_DET', defaults.DEFAULT_TRUNC_DET))

    # Jacobi-Trudi convention for Schur elements in imaginary root vectors
    SCHUR_TRANSPOSE = _env_bool('QA_SCHUR_TRANSPOSE', 'False')

    # Memo and search bounds
    FORM_CACHE_SIZE = int(os.environ.get('QA_FORM_CACHE_SIZE', defaults.FORM_CACHE_SIZE))
    EXTREMAL_BFS_FACTOR = int(os.environ.get('QA_EXTREMAL_BFS_FACTOR', defaults.EXTREMAL_BFS_FACTOR))

    # Largest |p| for PBW frames; 0 means one tau-period
    FRAME_LIMIT = int(os.environ.get('QA_FRAME_LIMIT', '0'))

    # tqdm progress bars on stderr
    SHOW_PROGRESS = _env_bool('QA_SHOW_PROGRESS', 'False')


class DevelopmentConfig(Config):
    """Development configuration"""


class TestingConfig(Config):
    """Testing configuration"""
    LOG_LEVEL = os.environ.get('LOG_LEVEL', 'WARNING')
    SHOW_PROGRESS = False


class ProductionConfig(Config):
    """Batch configuration for long unattended runs"""
    LOG_LEVEL = os.environ.get('LOG_LEVEL', 'WARNING')


# Dictionary to easily retrieve the right config
config = {
    'development': DevelopmentConfig,
    'testing': TestingConfig,
    'production': ProductionConfig,
    'default': DevelopmentConfig
}


def get_config():
    """Get the configuration based on environment"""
    env = os.environ.get('QA_ENV', 'default')
    return config.get(env, config['default'])
