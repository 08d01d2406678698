from src.ssidlens.distance import levenshtein, normalized_edit_distance
from src.ssidlens.identifiers import DICTIONARY_NAME, EMAIL, detect_identifiers, load_name_dictionary
from src.ssidlens.passwords import (
    DIGIT_GROUP_VARIANT,
    KEYWORD_PASSWORD,
    PROBABLE_PASSWORD,
    classify_password,
    is_password_candidate,
    password_cooccurrence,
    password_share,
)
from src.ssidlens.typos import TypoGroup, find_typo_groups, is_model_number_pair, typo_summary
from src.ssidlens.verdicts import TYPO_GROUP_MEMBER, SsidVerdict, classify_ssids, verdicts_to_jsonl
