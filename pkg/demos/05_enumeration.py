"""Growing the 5-vertex-critical (P5, chair)-free graphs vertex by vertex."""
import time

from critgraphs import EnumerationConfig, PatternFamily, enumerate_critical

fam = PatternFamily.from_names("P5,chair")
cfg = EnumerationConfig(k=5, family=fam, n_max=9, jobs=1)
print("config:", cfg.describe())

t0 = time.perf_counter()


def progress(n, frontier, candidates):
    print(f"  level {n}: {frontier:>5} 4-colourable parents kept, "
          f"{candidates:>4} non-4-colourable children, {time.perf_counter() - t0:5.1f}s")


result = enumerate_critical(cfg, progress=progress)
print()
print(result.counts.summary(title="5-critical", lo=5, hi=9))

print("\nThe smallest graphs found, in canonical graph6:")
for text in result.graph6_lines()[:4]:
    print(" ", text)

print("\nThe search is truncated at n_max, since 4-colourable (P5, chair)-free")
print("graphs never run out:", result.partial)
