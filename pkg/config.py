import os


def _primes(raw: str):
    return tuple(int(part) for part in raw.split(",") if part.strip())


class Config:
    SECRET_KEY = os.environ.get("SECRET_KEY", "dev-secret-key")
    WTF_CSRF_ENABLED = False
    HECKE_CACHE_DIR = os.environ.get("HECKE_CACHE_DIR", ".hecke_cache")
    HECKE_CACHE_ENABLED = os.environ.get("HECKE_CACHE_ENABLED", "true").lower() in {"1", "true", "yes"}
    HECKE_WINDOW = int(os.environ.get("HECKE_WINDOW", 2))
    HECKE_ORACLE_PRIMES = _primes(os.environ.get("HECKE_ORACLE_PRIMES", "2,3,5"))
    HECKE_SEED = int(os.environ.get("HECKE_SEED", 20240601))
    HECKE_SWEEP_SIZE = int(os.environ.get("HECKE_SWEEP_SIZE", 20))
    HECKE_OUTPUT = os.environ.get("HECKE_OUTPUT", "table")
    LOG_LEVEL = os.environ.get("LOG_LEVEL", "INFO")


class TestConfig(Config):
    TESTING = True
    HECKE_CACHE_ENABLED = False
    HECKE_OUTPUT = "json"
    HECKE_SWEEP_SIZE = 10
    LOG_LEVEL = "WARNING"
