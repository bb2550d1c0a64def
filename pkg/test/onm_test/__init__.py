import os

from hypothesis import settings

settings.register_profile("dev", max_examples=200, deadline=None)
settings.register_profile("acceptance", max_examples=10_000, deadline=None)
settings.load_profile(os.getenv("ONM_HYPOTHESIS_PROFILE", "dev"))
