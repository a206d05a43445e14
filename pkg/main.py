import sys


def check_requirements():
    """Check if all required packages are installed"""
    try:
        import sympy
        from dotenv import load_dotenv

        return True
    except ImportError as e:
        print(f"Missing required package: {e}", file=sys.stderr)
        print("Please run: pip install -r requirements.txt", file=sys.stderr)
        return False


if __name__ == "__main__":
    if not check_requirements():
        print("Exiting due to missing requirements.", file=sys.stderr)
        sys.exit(1)

    from app.cli import main

    sys.exit(main(sys.argv[1:]))
