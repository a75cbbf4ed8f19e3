/**
 * Chi-square survival function via the regularized upper incomplete gamma,
 * matching the harness's statistical machinery: lower-tail series for
 * x < a+1, modified-Lentz continued fraction otherwise, log-gamma by the
 * Lanczos approximation.
 */

const EPS = 1e-15
const MAX_ITER = 10_000
const TINY = 1e-300

// Lanczos g=7, n=9 coefficients.
const LANCZOS = [
  0.99999999999980993,
  676.5203681218851,
  -1259.1392167224028,
  771.32342877765313,
  -176.61502916214059,
  12.507343278686905,
  -0.13857109526572012,
  9.9843695780195716e-6,
  1.5056327351493116e-7,
]

export function logGamma(x: number): number {
  if (x <= 0) throw new Error(`logGamma requires a positive argument, got ${x}`)
  if (x < 0.5) {
    // reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x)
    return Math.log(Math.PI / Math.sin(Math.PI * x)) - logGamma(1 - x)
  }
  const z = x - 1
  let sum = LANCZOS[0]
  for (let i = 1; i < LANCZOS.length; i += 1) sum += LANCZOS[i] / (z + i)
  const t = z + 7.5
  return 0.5 * Math.log(2 * Math.PI) + (z + 0.5) * Math.log(t) - t + Math.log(sum)
}

export function regularizedGammaQ(a: number, x: number): number {
  if (a <= 0) throw new Error(`shape parameter must be positive, got ${a}`)
  if (x < 0) throw new Error(`argument must be nonnegative, got ${x}`)
  if (x === 0) return 1
  if (x < a + 1) return Math.min(1, Math.max(0, 1 - lowerSeries(a, x)))
  return Math.min(1, Math.max(0, upperContinuedFraction(a, x)))
}

function logPrefactor(a: number, x: number): number {
  return -x + a * Math.log(x) - logGamma(a)
}

function lowerSeries(a: number, x: number): number {
  let term = 1 / a
  let total = term
  let denom = a
  for (let i = 0; i < MAX_ITER; i += 1) {
    denom += 1
    term *= x / denom
    total += term
    if (Math.abs(term) < Math.abs(total) * EPS) {
      const logValue = logPrefactor(a, x) + Math.log(total)
      return logValue < 0 ? Math.exp(logValue) : 1
    }
  }
  throw new Error(`series for P(${a}, ${x}) did not converge`)
}

function upperContinuedFraction(a: number, x: number): number {
  let b = x + 1 - a
  let c = 1 / TINY
  let d = b !== 0 ? 1 / b : 1 / TINY
  let h = d
  for (let i = 1; i <= MAX_ITER; i += 1) {
    const an = -i * (i - a)
    b += 2
    d = an * d + b
    if (Math.abs(d) < TINY) d = TINY
    c = b + an / c
    if (Math.abs(c) < TINY) c = TINY
    d = 1 / d
    const delta = d * c
    h *= delta
    if (Math.abs(delta - 1) < EPS) {
      const logValue = logPrefactor(a, x)
      return logValue < -746 ? 0 : Math.exp(logValue) * h
    }
  }
  throw new Error(`continued fraction for Q(${a}, ${x}) did not converge`)
}

/** Upper-tail probability of the chi-square distribution. */
export function chiSquarePValue(statistic: number, df: number): number {
  if (!Number.isInteger(df) || df < 1) {
    throw new Error(`degrees of freedom must be a positive integer, got ${df}`)
  }
  if (statistic < 0) throw new Error(`statistic must be nonnegative, got ${statistic}`)
  return regularizedGammaQ(df / 2, statistic / 2)
}
