"""Bundled reference data: molecular constants and published energy values.

Two frozen datasets live here.

MOLECULE_CONSTANTS carries reduced masses (amu) and screening parameters
(1/Angstrom) for twelve diatomic molecules, exactly as tabulated in the
source compilation.  They are stored as Decimal-safe strings so that a
round-trip through the molecule file loader can be checked bit-for-bit.

REFERENCE_ENERGIES carries the published bound-state energies (eV) for
the same molecules on the (n, l) grid {0,5,7} x {0,5,10} with well
parameters A = -2 eV, B = 3 eV.  These are transcription targets for the
calibration report, not ground truth: the calibrated convention that
reproduces them (see molecules.reference_energy) differs from the full
closed-form spectrum in documented ways.
"""

from __future__ import annotations

__all__ = [
    "MOLECULE_CONSTANTS",
    "REFERENCE_ENERGIES",
    "REFERENCE_ENERGY_STRINGS",
    "REFERENCE_GRID",
    "REFERENCE_WELL_A",
    "REFERENCE_WELL_B",
]

# name -> (reduced mass string [amu], screening parameter string [1/Angstrom])
MOLECULE_CONSTANTS: dict[str, tuple[str, str]] = {
    "I2": ("63.452235020", "1.86430"),
    "CO": ("6.860586000", "2.29940"),
    "TiH": ("0.987371000", "1.32408"),
    "TiC": ("9.606079000", "1.52550"),
    "N2": ("7.003350000", "2.69860"),
    "NO": ("7.468441000", "2.75340"),
    "CrH": ("0.988976000", "1.52179"),
    "NiC": ("9.974265000", "2.25297"),
    "O2": ("7.997457504", "2.81510"),
    "LiH": ("0.880122100", "1.12800"),
    "VH": ("0.988005000", "1.44370"),
    "ScN": ("10.68277100", "1.50680"),
}

# Well depth parameters the reference energies were computed with (eV).
REFERENCE_WELL_A = -2.0
REFERENCE_WELL_B = 3.0

# (n, l) grid of the published table.
REFERENCE_GRID: tuple[tuple[int, int], ...] = (
    (0, 0), (0, 5), (0, 10),
    (5, 0), (5, 5), (5, 10),
    (7, 0), (7, 5), (7, 10),
)

_BLOCK_ONE = ("I2", "CO", "TiH", "TiC", "N2", "NO")
_BLOCK_TWO = ("CrH", "NiC", "O2", "LiH", "VH", "ScN")

# Verbatim printed energies, six molecules per row block.  Whitespace
# split only; digits untouched (note two entries print fewer digits).
_ROWS_ONE = """\
0 0 -2.01518700249 -2.05756153769 -2.08801628475 -2.03207234893 -2.06701616738 -2.06620070795
0 5 -1.86617831309 -1.52220413799 -1.30060734002 -1.72400386632 -1.45117393674 -1.45722010494
0 10 -1.72289229469 -1.06736269276 -0.69870620092 -1.44124539707 -0.94397059248 -0.95429245499
5 0 -2.33037239432 -3.36982420049 -4.21935759111 -2.72413935420 -3.62461728776 -3.60232077313
5 5 -2.16991836290 -2.67343489186 -3.06093303512 -2.36545084489 -2.79149728439 -2.78123426402
5 10 -2.01518700249 -2.05756153769 -2.08801628475 -2.03207234893 -2.06701616738 -2.06620070795
7 0 -2.46285594258 -3.98490713462 -5.27966285596 -3.02931337126 -4.36933328865 -4.33554810662
7 5 -2.29782377436 -3.22410506241 -3.97283205546 -2.65037685127 -3.44930217618 -3.42961923507
7 10 -2.13851427714 -2.54381894467 -2.85150906060 -2.29675034463 -2.63790995008 -2.62974331656"""

_ROWS_TWO = """\
0 0 -2.10140007384 -2.04665077681 -2.06539452919 -2.07925256173 -2.09612311332 -2.03002523536
0 5 -1.20972224650 -1.6067266228 -1.46321228291 -1.36224649240 -1.24509129115 -1.74087514222
0 10 -0.56269024132 -1.21996969697 -0.96455612783 -0.79627951893 -0.61445809096 -1.47392957006
5 0 -4.61869319503 -3.08600076935 -3.58033729534 -3.96638198801 -4.45938262359 -2.67493898459
5 5 -3.23772372335 -2.53974215899 -2.77110286666 -2.94729772693 -3.16755355746 -2.34137984949
5 10 -2.10140007384 -2.04665077681 -2.06539452919 -2.07925256173 -2.09612311332 -2.03002523536
7 0 -5.89961376433 -3.56128806192 -4.30226362393 -4.89039754589 -5.65153288432 -2.95777354778
7 5 -4.32292763492 -2.97249566902 -3.41020832231 -3.75048200812 -4.18338492061 -2.60645079589
7 10 -2.99088732768 -2.4368705043 -2.62167911187 -2.76160556622 -2.93563557888 -2.27733256498"""


def _parse_blocks() -> dict[tuple[str, int, int], str]:
    table: dict[tuple[str, int, int], str] = {}
    for rows, names in ((_ROWS_ONE, _BLOCK_ONE), (_ROWS_TWO, _BLOCK_TWO)):
        for line in rows.splitlines():
            parts = line.split()
            n, l = int(parts[0]), int(parts[1])
            assert len(parts) == 2 + len(names)
            for name, text in zip(names, parts[2:]):
                table[(name, n, l)] = text
    return table


# (name, n, l) -> published energy, verbatim digits (for byte-exact output)
REFERENCE_ENERGY_STRINGS: dict[tuple[str, int, int], str] = _parse_blocks()

# (name, n, l) -> published energy in eV
REFERENCE_ENERGIES: dict[tuple[str, int, int], float] = {
    key: float(text) for key, text in REFERENCE_ENERGY_STRINGS.items()
}

assert len(REFERENCE_ENERGIES) == 108
