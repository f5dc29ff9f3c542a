from nnmwe.cli import cli

if __name__ == '__main__':
    # Run the command-line pipeline
    cli()
