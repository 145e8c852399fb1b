from hypothesis import settings

# exact-arithmetic examples can be slow on cold caches; determinism of the
# whole suite matters more than per-example wall-clock enforcement
settings.register_profile("exact", deadline=None, derandomize=True)
settings.load_profile("exact")
