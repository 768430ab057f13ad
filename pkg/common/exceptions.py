from rest_framework import status
from rest_framework.response import Response
from rest_framework.views import exception_handler


class MdsOracleError(Exception):
    """
    Base class for every domain error raised by the checkers, the search and
    the derivative oracle. `code` is the stable machine-readable name.
    """
    code = "mds_oracle_error"

    def __init__(self, message: str = "", **context):
        super().__init__(message or self.code)
        self.message = message or self.code
        self.context = context

    def as_dict(self) -> dict:
        payload = {"error": self.message, "code": self.code}
        if self.context:
            payload["context"] = {k: str(v) for k, v in self.context.items()}
        return payload


class ZeroVector(MdsOracleError):
    code = "zero_vector"


class NoPositiveRelation(MdsOracleError):
    code = "no_positive_relation"


class InvalidPolytope(MdsOracleError):
    code = "invalid_polytope"


class OutOfRange(MdsOracleError):
    code = "out_of_range"


class NotSizeOne(MdsOracleError):
    code = "not_size_one"


class NonSimplicialSlice(MdsOracleError):
    code = "non_simplicial_slice"


class UnexpectedKernelDim(MdsOracleError):
    code = "unexpected_kernel_dim"


class NormalizationUnsolvable(MdsOracleError):
    code = "normalization_unsolvable"


class UnstableScale(MdsOracleError):
    # verdict at m and at 2m disagree
    code = "unstable_scale"


class InputError(MdsOracleError):
    """Unparseable command-line or JSON input; `token` is the offending piece."""
    code = "input_error"

    def __init__(self, message: str, token: str = ""):
        super().__init__(message, token=token)
        self.token = token


def custom_exception_handler(exc, context):
    """
    Map domain errors to 400 responses and attach status code and a
    machine-friendly error field to DRF's own responses.
    """
    if isinstance(exc, MdsOracleError):
        data = exc.as_dict()
        data["detail"] = exc.message
        data["status_code"] = status.HTTP_400_BAD_REQUEST
        return Response(data, status=status.HTTP_400_BAD_REQUEST)

    response = exception_handler(exc, context)
    if response is not None:
        if isinstance(response.data, dict):
            response.data.setdefault("status_code", response.status_code)
            if "detail" in response.data:
                response.data["error"] = str(response.data["detail"])
    return response
