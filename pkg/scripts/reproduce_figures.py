# scripts/reproduce_figures.py
"""
Write the throughput sweep tables behind the comparison plots.

Produces, in the output directory:
    epsilon_pm_<p_m>.csv      global design vs continuous jamming over epsilon
    pm_over_sigma_eps_<e>.csv the same over P_m / sigma_b2 (dB)

Usage:
    python scripts/reproduce_figures.py [output_dir]
"""

# imports built-in modules
import sys
from pathlib import Path

# Add project root to path for imports
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

# imports local modules
from src.cli.commands import cmd_sweep
from src.cli.settings import RunSettings
from src.exceptions import CovertJamError
from src.utils.formatters import render_csv
from src.utils.logger import get_app_logger

# Application logger
logger = get_app_logger()

EPSILON_SWEEP = ["sweep_start=0.01", "sweep_stop=0.49", "sweep_step=0.01"]
PM_SWEEP = ["sweep_start=-10", "sweep_stop=30", "sweep_step=1"]


def write_sweep(out_dir: Path, name: str, axis: str, overrides: list[str]) -> Path:
    """Run one sweep and write it as CSV with its resolved settings header."""
    settings = RunSettings.resolve(None, overrides)
    columns, records = cmd_sweep(settings, axis)
    path = out_dir / f"{name}.csv"
    path.write_text(render_csv(records, columns, settings.resolved({"axis": axis})), encoding="utf-8")
    logger.info(f"✅ {path} ({len(records)} rows)")
    return path


def main() -> int:
    out_dir = Path(sys.argv[1]) if len(sys.argv) > 1 else project_root / "figures"
    out_dir.mkdir(parents=True, exist_ok=True)
    logger.info(f"Writing sweep tables to {out_dir}")

    try:
        for p_m in ("0.1", "1", "10"):
            write_sweep(out_dir, f"epsilon_pm_{p_m}", "epsilon", [f"p_m={p_m}", *EPSILON_SWEEP])
        for eps in ("0.05", "0.2", "0.4"):
            write_sweep(out_dir, f"pm_over_sigma_eps_{eps}", "pm_over_sigma", [f"epsilon={eps}", *PM_SWEEP])
    except CovertJamError as e:
        logger.error(f"❌ Sweep failed: {e}")
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
