from hypothesis import settings

settings.register_profile("local", deadline=None)
settings.load_profile("local")
