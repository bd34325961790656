"""
Console entry points, one main() per subcommand.
"""
