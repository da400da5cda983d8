"""Utils package: input validators for the command line."""
