"""Bundled JSON fixtures: the builtin Hopf algebras, ready-made coefficients
(stable, unstable, and deliberately incompatible), example objects, and two
small prebuilt towers (one intact, one tampered).

Regenerate with ``python scripts/gen_fixtures.py`` from the repository root.
"""

from importlib import resources


def path(name):
    """Filesystem path of a bundled fixture (usable directly by the CLI)."""
    return resources.files(__package__) / name


def names():
    return sorted(
        entry.name
        for entry in resources.files(__package__).iterdir()
        if entry.name.endswith(".json")
    )
