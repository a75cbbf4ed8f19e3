/**
 * Verdict logic mirroring the harness's two test oracles, applied to
 * tool-convention bitstrings: an unexpected output (specified probability
 * zero) fails immediately; otherwise Pearson's chi-square goodness-of-fit
 * against the expected distribution decides, at the given significance
 * level. One possible output means zero degrees of freedom and no
 * distribution check.
 */

import { chiSquarePValue } from './chi-square.js'

export type VerdictKind = 'pass' | 'uof' | 'wodf'

export interface Verdict {
  kind: VerdictKind
  alpha: number
  witness?: string
  statistic?: number
  pValue?: number
}

/** input bitstring -> (output bitstring -> probability), tool convention. */
export type Spec = Map<string, Map<string, number>>

export const SHOTS_PER_OUTPUT = 100

export function specFromJson(text: string): Spec {
  let data: unknown
  try {
    data = JSON.parse(text)
  } catch (err) {
    throw new Error(`spec is not valid JSON: ${String(err)}`)
  }
  const inputs = (data as { inputs?: unknown }).inputs
  if (typeof inputs !== 'object' || inputs === null) {
    throw new Error('spec must be an object with an "inputs" key')
  }
  const spec: Spec = new Map()
  for (const [input, dist] of Object.entries(inputs)) {
    const entry = new Map<string, number>()
    for (const [output, p] of Object.entries(dist as Record<string, number>)) {
      if (!(typeof p === 'number') || p <= 0 || p > 1) {
        throw new Error(`probability of ${output} for input ${input} must be in (0, 1]`)
      }
      entry.set(output, p)
    }
    if (entry.size === 0) throw new Error(`input ${input} has an empty distribution`)
    spec.set(input, entry)
  }
  if (spec.size === 0) throw new Error('spec has no input entries')
  return spec
}

export function distributionFor(spec: Spec, input: string): Map<string, number> {
  const dist = spec.get(input)
  if (!dist) throw new Error(`spec has no entry for input ${input}`)
  return dist
}

export function shotsForInput(spec: Spec, input: string): number {
  return distributionFor(spec, input).size * SHOTS_PER_OUTPUT
}

export function checkUof(
  spec: Spec,
  input: string,
  histogram: Map<string, number>,
): string | undefined {
  const expected = distributionFor(spec, input)
  const unexpected: string[] = []
  for (const [output, count] of histogram) {
    if (count > 0 && !expected.has(output)) unexpected.push(output)
  }
  if (unexpected.length === 0) return undefined
  return unexpected.sort()[0]
}

export function chiSquareStatistic(
  observed: Map<string, number>,
  expected: Map<string, number>,
): { statistic: number; df: number } {
  let total = 0
  for (const [output, count] of observed) {
    if (count > 0 && !expected.has(output)) {
      throw new Error(`observed output ${output} has expected probability 0`)
    }
    total += count
  }
  if (total < 1) throw new Error('histogram is empty')
  let statistic = 0
  for (const [output, p] of expected) {
    const expCount = total * p
    const diff = (observed.get(output) ?? 0) - expCount
    statistic += (diff * diff) / expCount
  }
  return { statistic, df: expected.size - 1 }
}

export function assess(
  spec: Spec,
  input: string,
  histogram: Map<string, number>,
  alpha: number,
): Verdict {
  if (!(alpha > 0 && alpha < 1)) throw new Error(`alpha must be in (0, 1), got ${alpha}`)
  const expected = distributionFor(spec, input)
  let total = 0
  for (const count of histogram.values()) total += count
  const required = expected.size * SHOTS_PER_OUTPUT
  if (total !== required) {
    throw new Error(`histogram total ${total} does not match required shots ${required}`)
  }
  const witness = checkUof(spec, input, histogram)
  if (witness !== undefined) return { kind: 'uof', alpha, witness }
  if (expected.size < 2) return { kind: 'pass', alpha }
  const { statistic, df } = chiSquareStatistic(histogram, expected)
  const pValue = chiSquarePValue(statistic, df)
  return { kind: pValue < alpha ? 'wodf' : 'pass', alpha, statistic, pValue }
}
