"""One argv per documented subcommand, shared by the CLI and acceptance tests."""

from pathlib import Path

DATA = Path(__file__).parent / "data"
GOLDEN = Path(__file__).parent / "golden"

CASES = {
    "eval": ["eval", "--k", "3", "--coeffs", "1,1,1,1", "--points", str(DATA / "sum2_points.txt")],
    "enumerate": ["enumerate", "--k", "3", "--coeffs", "1,1,1,1", "--N", "2", "--B", "2"],
    "count": ["count", "--k", "3", "--coeffs", "1,1,1,1", "--N", "10", "--B", "10", "--region", "nonneg"],
    "classify": ["classify", "--k", "3", "--coeffs", "1,1,1,1", "--N", "2", "--points", str(DATA / "sum2_points.txt")],
    "thue": ["thue", "--a", "1", "--b", "1", "--k", "3", "--h", "1729", "--bound", "2000"],
    "zeros": ["zeros", "--k", "3", "--coeffs=1,1,-2", "--B", "10", "--primitive"],
    "moebius-check": ["moebius-check", "--k", "3", "--coeffs=1,1,-2", "--B", "50"],
    "detmethod exponent": ["detmethod", "exponent", "--k", "27"],
    "detmethod params": ["detmethod", "params", "--k", "10", "--eps", "0.05", "--B", "1e6"],
    "detmethod tetra": ["detmethod", "tetra", "--nu", "3", "--alpha", "2"],
    "detmethod order": ["detmethod", "order", "--M", "4", "--alpha", "3/2", "--delta", "3"],
    "detmethod nullspace": ["detmethod", "nullspace", "--points", str(DATA / "aux_points.txt"), "--delta", "2"],
    "detmethod goodcubes": ["detmethod", "goodcubes", "--k", "3", "--coeffs=1,1,1,-1", "--M", "8,16"],
    "detmethod vdm-check": ["detmethod", "vdm-check", "--points", str(DATA / "vdm_points.txt")],
    "scaling": ["scaling", "--k", "3", "--coeffs=1,1,1,-1", "--N", "1", "--B", "8:64", "--format", "csv"],
    "rk": ["rk", "--k", "3", "--N", "10"],
    "rkl": ["rkl", "--k", "3", "--l", "4", "--N", "17"],
    "r0": ["r0", "--k", "3", "--coeffs", "1,1,1", "--M", "3", "--B", "2"],
}

GOLDEN_CASES = {
    "rk_3_2.txt": ["rk", "--k", "3", "--N", "2"],
    "rk_3_10.txt": ["rk", "--k", "3", "--N", "10"],
    "rkl_3_4_17.txt": ["rkl", "--k", "3", "--l", "4", "--N", "17"],
    "thue_1729.txt": CASES["thue"],
    "count_3_10.txt": CASES["count"],
}
