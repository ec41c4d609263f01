from hypothesis import settings

settings.register_profile("ospchar", max_examples=60, deadline=None)
settings.load_profile("ospchar")
