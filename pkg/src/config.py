"""
Configuration management for grpwild.

This module provides centralized configuration using pydantic-settings,
which automatically loads values from environment variables and .env files.

Configuration Hierarchy (highest to lowest priority):
    1. Command-line flags (applied by main.py through Settings.model_copy)
    2. Environment variables (e.g., GRPWILD_MAX_ENUM=65536)
    3. .env file in the working directory
    4. Default values defined in Settings class

Usage:
    from config import get_settings

    settings = get_settings()
    print(settings.brute_aut_limit)  # Reads GRPWILD_BRUTE_AUT_LIMIT or default

Environment Variable Naming:
    - All settings use UPPER_SNAKE_CASE with the GRPWILD_ prefix
    - The cache directory is the exception: GRPWILD_CACHE
    - Example: witness_depth -> GRPWILD_WITNESS_DEPTH

Caching:
    get_settings() is cached with lru_cache, so settings are loaded once
    and reused. To reload settings, call get_settings.cache_clear() first.

Version: 0.4.0
License: MIT
"""

from functools import lru_cache
from pathlib import Path
from typing import Any

from pydantic import AliasChoices, Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """
    Computation limits and run options loaded from environment variables.

    All settings have defaults sized for desk-scale experiments (groups up to
    a few hundred thousand elements, brute-force automorphisms up to 256).

    Attributes:
        Enumeration:
            max_enum: Largest group order that may be enumerated element by element
            dense_table_limit: Largest order that gets a dense order x order table
            sparse_threshold: GF(p) vectors above this dimension are stored sparsely
            derived_pairwise_limit: Subgroups up to this size get all-pairs commutators

        Automorphisms:
            brute_aut_limit: Largest order accepted by brute_force_aut
            perm_closure_limit: Ceiling on permutation-group closures (D0, D1)
            witness_depth: Default BFS depth for witness words
            witness_table_aut: Add Aut(G) generators to table-group witness searches

        Run options:
            threads: Worker count for per-class searches
            seed: Seed for every random choice (samples, random D1)
            cache_dir: Directory for cached enumerations (GRPWILD_CACHE)
            report_timings: Include wall-clock timings in reports
            symbolic_digits: Orders with more decimal digits are rendered as towers
            log_level: Root log level for the CLI
    """

    # =========================================================================
    # Enumeration Limits
    # =========================================================================
    max_enum: int = Field(default=2**21, ge=1)
    """Largest group order that may be enumerated (elements indexed 0..order-1)."""

    dense_table_limit: int = Field(default=4096, ge=1)
    """
    Largest order stored as a dense multiplication table.

    A dense table costs order^2 int32 entries (64 MiB at 4096). Larger
    enumerable groups multiply through a callback instead.
    """

    sparse_threshold: int = Field(default=4096, ge=1)
    """GF(p) vectors of higher dimension use the sparse dict representation."""

    derived_pairwise_limit: int = Field(default=4096, ge=1)
    """
    Subgroups up to this size compute their derived subgroup from all pairs.

    Above it, generator-pair commutators plus normal closure are used.
    """

    # =========================================================================
    # Automorphism Search
    # =========================================================================
    brute_aut_limit: int = Field(default=256, ge=1)
    """Largest order for which the full automorphism group is brute-forced."""

    perm_closure_limit: int = Field(default=10**6, ge=1)
    """Maximum number of permutations produced when closing D0 / D1."""

    witness_depth: int = Field(default=3, ge=0)
    """Default depth of the breadth-first witness search over primitive words."""

    witness_table_aut: bool = False
    """
    Search letters for witness mode on table groups.

    Off: inner automorphisms by the generators only. On: the generators of a
    brute-forced Aut(G) are added as perm letters (orders up to brute_aut_limit).
    G_p(A) searches always use psi, phi, psi_i, lifts and inner maps.
    """

    # =========================================================================
    # Run Options
    # =========================================================================
    threads: int = Field(default=1, ge=1)
    """Worker threads for per-class witness searches and harness checks."""

    seed: int = 0
    """Seed for sampled elements and random intermediate D1 groups."""

    cache_dir: Path | None = Field(
        default=None,
        validation_alias=AliasChoices("GRPWILD_CACHE", "cache_dir"),
    )
    """
    Directory for cached conjugacy partitions and enumerations.

    Read from GRPWILD_CACHE (no prefix applied). None disables caching.
    """

    report_timings: bool = False
    """
    Include timings in reports.

    Off by default so that reports are byte-identical across runs.
    """

    symbolic_digits: int = Field(default=200, ge=1)
    """Orders with more decimal digits than this are reported as factor towers."""

    log_level: str = "WARNING"
    """Root log level used by the CLI (DEBUG, INFO, WARNING, ERROR)."""

    # =========================================================================
    # Pydantic Settings Configuration
    # =========================================================================
    model_config = SettingsConfigDict(
        env_prefix="GRPWILD_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",  # Ignore unknown env vars
        populate_by_name=True,
    )


_pinned: Settings | None = None


@lru_cache
def get_settings() -> Settings:
    """
    Get cached settings instance.

    To reload settings (e.g., in tests):
        get_settings.cache_clear()
        new_settings = get_settings()

    Returns:
        Settings instance with values from environment/defaults
    """
    return _pinned if _pinned is not None else Settings()


def configure(**updates: Any) -> Settings:
    """
    Pin a copy of the current settings with ``updates`` applied.

    Used by the CLI to layer flags over the environment. None values are
    ignored, so unset flags keep the environment value. The merged values are
    validated again, so field constraints hold for flags too.

    Returns:
        The pinned Settings instance

    Raises:
        ValidationError: an update violates a field constraint
    """
    global _pinned
    changes = {k: v for k, v in updates.items() if v is not None}
    _pinned = Settings.model_validate({**get_settings().model_dump(), **changes})
    get_settings.cache_clear()
    return _pinned


def reset_settings() -> None:
    """Drop pinned settings and reload from the environment on next access."""
    global _pinned
    _pinned = None
    get_settings.cache_clear()
