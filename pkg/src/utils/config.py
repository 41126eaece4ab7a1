from pydantic_settings import BaseSettings, SettingsConfigDict
from pydantic import field_validator
from typing import Literal
import json

class Settings(BaseSettings):
    # Application Settings
    app_name: str = "Magnetic Spectra Toolkit"
    debug: bool = False
    log_level: str = "INFO"

    # Eigensolver
    # "tridiagonal": real doubling embedding + Householder reduction + tridiagonal QL
    # "lapack": complex Hermitian matrix handed straight to numpy.linalg.eigvalsh
    eigensolver_backend: Literal["tridiagonal", "lapack"] = "tridiagonal"

    # Numerical tolerances
    hermitian_tol: float = 1e-10  # max |H - H*| accepted by the solver
    pairing_tol: float = 1e-10  # doubled eigenvalues must agree to this (scaled by max |H|)
    order_tol: float = 1e-12  # slack in the spectral order comparison
    merge_tol: float = 1e-9  # intervals closer than this are merged, gaps shorter are dropped
    angle_tol: float = 1e-12  # circle distance for angle equality
    trace_tol: float = 1e-9  # trace identity discrepancy bound
    band_refine_tol: float = 1e-6  # endpoint drift reported by grid doubling

    # Cost guard (client-side guard rail for grid sweeps)
    cost_cap: float = 1e10  # grid points * n^3
    max_magnetic_betti: int = 4  # torus dimension accepted by magnetic_gap_set
    max_workers: int = 1  # thread pool width for independent grid rows

    # Output formatting
    significant_digits: int = 12

    # SVG rendering
    svg_width: int = 800
    svg_height: int = 400
    svg_band_color: str = "#9e9e9e"
    svg_background: str = "#ffffff"
    svg_margin: int = 40

    @field_validator('cost_cap', mode='before')
    @classmethod
    def parse_cost_cap(cls, v):
        """Accept plain numbers as well as underscore-grouped strings ("1_000_000")."""
        if isinstance(v, str):
            return float(v.replace("_", "").strip())
        return v

    @field_validator('max_workers', 'max_magnetic_betti', mode='before')
    @classmethod
    def parse_positive_int(cls, v):
        """Parse ints from env strings, JSON numbers included."""
        if isinstance(v, str):
            v = json.loads(v)
        if int(v) < 1:
            raise ValueError("must be at least 1")
        return int(v)

    @field_validator('log_level', mode='before')
    @classmethod
    def normalize_log_level(cls, v):
        return str(v).upper()

    model_config = SettingsConfigDict(
        env_prefix="MAGLAP_",
        env_file=".env",
        case_sensitive=False,
        extra="ignore",  # Ignore extra env vars not defined as fields
    )

settings = Settings()

def format_real(x: float, settings: Settings = settings) -> str:
    """Render a real number with the configured number of significant digits."""
    text = f"{float(x):.{settings.significant_digits}g}"
    return "0" if text == "-0" else text

__all__ = ["Settings", "settings", "format_real"]
