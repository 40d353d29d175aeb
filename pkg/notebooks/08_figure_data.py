# %% [markdown]
# # Plot data for W_{alpha,beta,nu}
#
# Four panels, nine values of nu each, written as CSV.  Plotting is left to
# whatever tool reads the files.

# %%
import sys
import tempfile
from pathlib import Path

from multiwright.figure import PANELS, figure_panel, format_csv

out = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(tempfile.mkdtemp())
for panel, (alpha, beta) in PANELS.items():
    header, data = figure_panel(panel)
    path = out / f"panel_{panel}.csv"
    path.write_text(format_csv(header, data))
    print(f"panel {panel}: alpha={alpha}, beta={beta}, W(3) for nu=0..2 ->", data[-1, 1:].round(4), path)
