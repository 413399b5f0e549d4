EXIT_CODES = {
    'ok': 0,
    'parse': 1,
    'hypothesis': 2,
    'oracle': 3,
    'budget': 4
}

ERROR_EXITS = {
    'PARSE_ERROR': EXIT_CODES['parse'],
    'SHAPE_MISMATCH': EXIT_CODES['parse'],
    'NOT_WELL_DEFINED': EXIT_CODES['parse'],
    'INVALID_GROUP': EXIT_CODES['parse'],
    'NOT_A_COMPLEX': EXIT_CODES['parse'],
    'NOT_AUTOMORPHISM': EXIT_CODES['parse'],
    'NOT_INDUCIBLE': EXIT_CODES['parse'],
    'UNSUPPORTED_RANK': EXIT_CODES['parse'],
    'HYPOTHESIS_VIOLATION': EXIT_CODES['hypothesis'],
    'BUDGET_EXCEEDED': EXIT_CODES['budget']
}

GROUP_NAMES = ('H3', 'H4', 'H5', 'H6')
