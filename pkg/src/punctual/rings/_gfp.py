# Low-level arithmetic on polynomials over GF(p) stored as int lists,
# index i = coefficient of y^i, no trailing zeros.


def trim(f):
    while f and f[-1] == 0:
        f.pop()
    return f


def add(f, g, p):
    if len(f) < len(g):
        f, g = g, f
    out = list(f)
    for i, c in enumerate(g):
        out[i] = (out[i] + c) % p
    return trim(out)


def sub(f, g, p):
    return add(f, [(-c) % p for c in g], p)


def mul(f, g, p):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return trim([c % p for c in out])


def divmod_(f, g, p):
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    f = list(f)
    dg = len(g) - 1
    inv = pow(g[-1], -1, p)
    q = [0] * max(len(f) - dg, 0)
    while len(f) - 1 >= dg and f:
        c = f[-1] * inv % p
        shift = len(f) - 1 - dg
        q[shift] = c
        for i, b in enumerate(g):
            f[shift + i] = (f[shift + i] - c * b) % p
        trim(f)
    return trim(q), f


def rem(f, g, p):
    return divmod_(f, g, p)[1]


def mulmod(f, g, m, p):
    return rem(mul(f, g, p), m, p)


def powmod(f, e, m, p):
    result = [1]
    base = rem(list(f), m, p)
    while e:
        if e & 1:
            result = mulmod(result, base, m, p)
        e >>= 1
        if e:
            base = mulmod(base, base, m, p)
    return result


def gcd(f, g, p):
    f, g = trim(list(f)), trim(list(g))
    while g:
        f, g = g, rem(f, g, p)
    if f:
        inv = pow(f[-1], -1, p)
        f = [c * inv % p for c in f]
    return f


def prime_factors(n):
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def is_irreducible(f, p):
    """Rabin's test for a monic f over GF(p)."""
    r = len(f) - 1
    if r < 1:
        return False
    if r == 1:
        return True
    x = [0, 1]
    if sub(powmod(x, p ** r, f, p), x, p):
        return False
    for q in prime_factors(r):
        h = sub(powmod(x, p ** (r // q), f, p), x, p)
        if len(gcd(f, h, p)) != 1:
            return False
    return True


def is_prime(n):
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True
