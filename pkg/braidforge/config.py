"""Configuration from environment variables."""

from pathlib import Path

from pydantic_settings import BaseSettings


class Settings(BaseSettings):
    # Terminal output (BRAIDFORGE_COLOR); the only environment switch
    color: bool = False

    class Config:
        env_prefix = "BRAIDFORGE_"
        case_sensitive = False


settings = Settings()


# Numeric limits; explicit CLI flags override these
DEFAULT_WINDOW = 3
DEFAULT_BUDGET = 500

# Structured output schema version
SCHEMA_VERSION = "1.0"

# Shipped Tietze scripts
SCRIPTS_DIR = Path(__file__).parent / "services" / "tietze" / "shipped"

# CLI family aliases -> catalog family names
FAMILY_ALIASES = {
    "braid": "Braid",
    "b": "Braid",
    "sym": "Symmetric",
    "symmetric": "Symmetric",
    "wb": "WeldedBraid",
    "fvb": "FlatVirtualBraid",
    "fwb": "FlatWeldedBraid",
    "fvb3p": "ExplicitFVB3Prime",
    "fwb3p": "ExplicitFWB3Prime",
}
