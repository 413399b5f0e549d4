import sys

from dotenv import load_dotenv

from src.settings import init_settings


if __name__ == '__main__':
    load_dotenv()
    init_settings()

    from src.cli import main
    sys.exit(main())
