import hypothesis

hypothesis.settings.register_profile(
    "pkg", deadline=None, derandomize=True, max_examples=80
)
hypothesis.settings.load_profile("pkg")
