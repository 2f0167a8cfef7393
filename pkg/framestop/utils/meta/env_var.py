import os


def add_env_var():
    default_values = {"FRAMESTOP_DEBUG": "False"}
    for key, value in default_values.items():
        os.environ[key] = os.environ.get(key, value)


def is_debug_mode():
    value = os.environ.get("FRAMESTOP_DEBUG", "False")
    return value.strip().lower() in ["1", "true", "yes", "on"]
