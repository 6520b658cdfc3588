from steinberg_schur.extensions.report import CheckItem, CheckReport
from steinberg_schur.extensions.predicted import PredictedUCE, predicted_uce
from steinberg_schur.extensions.models import ExtensionModel, CosetGroup, from_group_tables, \
    from_central_quotient, from_tables, direct_product_model, check_pairing_identities
from steinberg_schur.extensions.generic import generic_uce, certify_generic_uce
from steinberg_schur.extensions.d4_model import D4Model, build_d4_model, verify_d4_action
