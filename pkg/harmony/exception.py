class ConfigError(Exception):
    pass


class ValidationError(Exception):
    pass


class DomainError(ArithmeticError):
    pass


class FeasibilityError(Exception):
    pass


class RegistryError(LookupError):
    pass


class VerificationError(Exception):
    pass
