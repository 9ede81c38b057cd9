"""
Copies env.example to .env for a local checkout. The keys are
ALPHA_DEBUG_ASSERTIONS, ALPHA_MAX_VERTICES, ALPHA_LOG_LEVEL,
ALPHA_VERIFY_SEED and ALPHA_FIXTURE_DIR; utils.config and
storage.graph_files read them. An existing .env is left alone.
"""

import os
import shutil


def setup_env(env_file: str = ".env", env_example: str = "env.example") -> bool:
    """Create .env file from env.example if it doesn't exist."""
    if os.path.exists(env_file):
        print(f"{env_file} already exists. Skipping setup.")
        return False

    if not os.path.exists(env_example):
        print(f"Error: {env_example} not found. Please create it manually.")
        return False

    try:
        shutil.copy(env_example, env_file)
    except OSError as e:
        print(f"Error creating {env_file}: {e}")
        return False
    print(f"Created {env_file} from {env_example}")
    return True


if __name__ == "__main__":
    setup_env()
