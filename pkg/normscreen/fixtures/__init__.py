"""Bundled datasets.

``set1``: log10 aqueous solubility of 166 drug-like compounds.
``set2``: log10 octanol-water partition coefficient of 206 polychlorinated
biphenyls.
"""
from pathlib import Path

from normscreen.sample import Sample, make_sample

import numpy as np

FIXTURES_DIR = Path(__file__).resolve().parent

FIXTURES = {
    "set1": FIXTURES_DIR / "set1_sol.txt",
    "set2": FIXTURES_DIR / "set2_pcb_logkow.txt",
}


def fixture_path(alias: str) -> Path:
    """Path of a bundled dataset.

    Parameters
    ----------
    alias : str
        "set1" or "set2".

    Returns
    -------
    Path
        Data file.

    Raises
    ------
    KeyError
        Unknown alias.
    """
    try:
        return FIXTURES[alias.lower()]
    except KeyError:
        raise KeyError(
            f"Unknown dataset '{alias}', options: {', '.join(FIXTURES)}."
        ) from None


def load_fixture(alias: str) -> Sample:
    """Load a bundled dataset as a sample labelled with its alias."""
    values = np.loadtxt(fixture_path(alias), comments="#", ndmin=1)
    return make_sample(values, label=alias.lower())


__all__ = ["FIXTURES", "FIXTURES_DIR", "fixture_path", "load_fixture"]
