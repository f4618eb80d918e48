"""Figures and plot data for rank-2 instances.

Fans live in coweight coordinates and are drawn in the plane where the
fundamental coweights are ``(1, 0)`` and ``(1, 1)``; polytopes are drawn
in root coordinates (exponent space), and the brick polytope also in the
ambient lattice when one is available.
"""

from __future__ import annotations

import math
from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .display import ambient, digit_string, fmt_vec, has_ambient  # noqa: E402
from .verify import Instance  # noqa: E402

_COWEIGHT_FRAME = ((1, 0), (1, 1))


def to_frame(v: Sequence, frame=_COWEIGHT_FRAME) -> tuple:
    return (float(v[0] * frame[0][0] + v[1] * frame[1][0]),
            float(v[0] * frame[0][1] + v[1] * frame[1][1]))


def ccw(points: Sequence[Sequence]) -> list:
    """Vertices of a convex polygon sorted counterclockwise."""
    pts = [tuple(p) for p in points]
    if len(pts) < 3:
        return sorted(pts)
    cx = sum(float(p[0]) for p in pts) / len(pts)
    cy = sum(float(p[1]) for p in pts) / len(pts)
    return sorted(pts, key=lambda p: math.atan2(float(p[1]) - cy, float(p[0]) - cx))


def normal_rays(vertices: Sequence[Sequence]) -> list:
    """Outer edge normals of a polygon, segment or point (integer vectors)."""
    pts = ccw(vertices)
    if len(pts) == 1:
        return []
    if len(pts) == 2:
        (a, b), (c, d) = pts
        n = (d - b, a - c)
        return [n, (-n[0], -n[1])]
    out = []
    for p, q in zip(pts, pts[1:] + pts[:1]):
        out.append((q[1] - p[1], p[0] - q[0]))
    return out


def _primitive(v):
    g = math.gcd(*[int(x) for x in v]) or 1
    return tuple(int(x) // g for x in v)


def plot_data(inst: Instance) -> list:
    """Rows ``(figure, panel, kind, label, coordinates, drawn)``."""
    if inst.R.n != 2:
        raise ValueError("plot data is only produced for rank 2")
    rows = []
    for i, ray in enumerate(inst.fan.rays):
        rows.append(("gfan", "0", "ray", str(inst.fan.labels[i]), fmt_vec(ray), fmt_vec(to_frame(ray))))
    for cone in inst.fan.maximal_cones:
        rows.append(("gfan", "0", "cone", "-", " ".join(str(r) for r in cone), "-"))
    for k, beta in enumerate(inst.bg.positive_roots):
        rec = inst.by_root[beta]
        verts = ccw(inst.bg.summand_polytope(beta).vertices)
        for v in verts:
            rows.append(("newton", str(k), "vertex", digit_string(beta), fmt_vec(v), fmt_vec(v)))
        for ray in sorted({_primitive(r) for r in normal_rays(verts)}):
            rows.append(("tropical", str(k), "ray", digit_string(beta), fmt_vec(ray), fmt_vec(to_frame(ray))))
        for e in sorted(rec.f_polynomial.terms):
            rows.append(("newton", str(k), "exponent", digit_string(beta), fmt_vec(e), fmt_vec(e)))
    for v in ccw(inst.bg.asso_polytope().vertices):
        drawn = ambient(inst.R, v) if has_ambient(inst.R) else v
        rows.append(("brick", "0", "vertex", digit_string(v), fmt_vec(v), fmt_vec(drawn)))
    return rows


def write_plot_data(inst: Instance, path: Path) -> Path:
    rows = plot_data(inst)
    with open(path, "w") as fh:
        fh.write("figure\tpanel\tkind\tlabel\tcoordinates\tdrawn\n")
        for r in rows:
            fh.write("\t".join(r) + "\n")
    return path


def _draw_fan(ax, rays, cones=None, radius=2.0):
    ax.set_xlim(-radius, radius)
    ax.set_ylim(-radius, radius)
    ax.set_aspect("equal")
    ax.add_patch(plt.Rectangle((-radius, -radius), 2 * radius, 2 * radius, color="#f4cccc", alpha=0.5))
    for r in rays:
        x, y = to_frame(r)
        s = 3 * radius / max(abs(x), abs(y), 1e-9)
        ax.plot([0, x * s], [0, y * s], color="#cc4444", lw=1.4)
    ax.set_xticks([])
    ax.set_yticks([])


def _draw_polygon(ax, verts, labels=True):
    pts = ccw(verts)
    xs = [float(p[0]) for p in pts]
    ys = [float(p[1]) for p in pts]
    if len(pts) >= 3:
        ax.fill(xs, ys, color="#aab8f0", alpha=0.75, ec="#8899dd", lw=1.2)
    elif len(pts) == 2:
        ax.plot(xs, ys, color="#8899dd", lw=1.6)
    ax.scatter(xs, ys, color="#3344aa", zorder=3, s=14)
    if labels:
        for p in pts:
            ax.annotate(digit_string(p), (float(p[0]), float(p[1])), textcoords="offset points",
                        xytext=(3, 3), fontsize=7)
    lo = min(min(xs), min(ys)) - 0.5
    hi = max(max(xs), max(ys)) + 0.5
    ax.set_xlim(lo, hi)
    ax.set_ylim(lo, hi)
    ax.set_aspect("equal")


def render_figures(inst: Instance, out_dir: Path) -> list:
    """Write the PNG figures and the plot-data table; returns the paths."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    stem = f"{inst.type_name}_{inst.word}"
    paths = [write_plot_data(inst, out_dir / f"{stem}_plotdata.tsv")]
    roots = inst.bg.positive_roots

    fig, axes = plt.subplots(1, len(roots) + 1, figsize=(2.4 * (len(roots) + 1), 2.6))
    _draw_fan(axes[0], inst.fan.rays)
    axes[0].set_title("g-vector fan", fontsize=8)
    for ax, beta in zip(axes[1:], roots):
        _draw_polygon(ax, inst.bg.summand_polytope(beta).vertices)
        ax.set_title(f"Newton F_{digit_string(beta)}", fontsize=8)
    fig.tight_layout()
    paths.append(out_dir / f"{stem}_gfan_newton.png")
    fig.savefig(paths[-1], dpi=120)
    plt.close(fig)

    fig, axes = plt.subplots(1, len(roots) + 1, figsize=(2.4 * (len(roots) + 1), 2.6))
    _draw_fan(axes[0], inst.fan.rays)
    axes[0].set_title("slice fan", fontsize=8)
    for ax, beta in zip(axes[1:], roots):
        verts = inst.bg.summand_polytope(beta).vertices
        _draw_fan(ax, normal_rays(verts))
        ax.set_title(f"domains for {digit_string(beta)}", fontsize=8)
    fig.tight_layout()
    paths.append(out_dir / f"{stem}_tropical.png")
    fig.savefig(paths[-1], dpi=120)
    plt.close(fig)

    fig, ax = plt.subplots(figsize=(3.2, 3.2))
    verts = inst.bg.asso_polytope().vertices
    if has_ambient(inst.R):
        drawn = [ambient(inst.R, v) for v in verts]
        _draw_polygon(ax, drawn, labels=False)
        for v, d in zip(verts, drawn):
            ax.annotate(digit_string(v), (float(d[0]), float(d[1])), textcoords="offset points",
                        xytext=(3, 3), fontsize=7)
    else:
        _draw_polygon(ax, verts)
    ax.set_title("brick polytope", fontsize=8)
    fig.tight_layout()
    paths.append(out_dir / f"{stem}_brick.png")
    fig.savefig(paths[-1], dpi=120)
    plt.close(fig)
    return paths
