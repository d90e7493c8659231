def join_terms(terms, fmt):
    """Render ``[(coeff, monomial), ...]`` (display order) as a sum.

    ``monomial`` is ``""`` for the constant term.  Coefficients whose printed
    form contains a space are compound and get parenthesised before a
    monomial.
    """
    parts = []
    for coeff, mono in terms:
        s = fmt(coeff)
        if not mono:
            body = s
        elif s == "1":
            body = mono
        elif s == "-1":
            body = "-" + mono
        elif " " in s:
            body = f"({s})*{mono}"
        else:
            body = f"{s}*{mono}"
        if not parts:
            parts.append(body)
        elif body.startswith("-"):
            parts.append(" - " + body[1:])
        else:
            parts.append(" + " + body)
    return "".join(parts) if parts else "0"


def power(var, e):
    return var if e == 1 else f"{var}^{e}"
