"""Time the pure-Python kernels against the compiled extension.

Run as a script; it prints one row per workload with both timings and the
speedup, and it cross-checks that the backends return identical results
before trusting any number.
"""

import time

from heckeposet import _kernels_py

try:
    from heckeposet import _kernels_cy
except ImportError:
    _kernels_cy = None


def timed(fn, *args):
    t0 = time.perf_counter()
    out = fn(*args)
    return out, time.perf_counter() - t0


def sweep_posets(mod, n):
    return mod.enumerate_posets(n)


def sweep_extensions(mod, n):
    total = 0
    for up in mod.enumerate_posets(n):
        total += len(mod.linear_extension_words(up, n))
    return total


def sweep_regular(mod, n):
    return sum(1 for up in mod.enumerate_posets(n) if mod.is_regular(up, n))


WORKLOADS = [
    ("enumerate_posets(5)", sweep_posets, 5),
    ("enumerate_posets(6)", sweep_posets, 6),
    ("extensions sweep n=5", sweep_extensions, 5),
    ("regular sweep n=6", sweep_regular, 6),
]


def main():
    if _kernels_cy is None:
        print("compiled extension not built; nothing to compare")
        return
    print("%-24s %12s %12s %9s" % ("workload", "python (s)", "cython (s)", "speedup"))
    for name, fn, n in WORKLOADS:
        py_out, py_t = timed(fn, _kernels_py, n)
        cy_out, cy_t = timed(fn, _kernels_cy, n)
        if py_out != cy_out:
            raise AssertionError("backends disagree on %s" % name)
        print("%-24s %12.3f %12.3f %8.1fx" % (name, py_t, cy_t, py_t / cy_t))


if __name__ == "__main__":
    main()
