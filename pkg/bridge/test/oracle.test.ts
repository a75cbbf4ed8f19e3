import { describe, expect, it } from 'vitest'

import { assess, checkUof, shotsForInput, specFromJson } from '../src/index.js'

const BELL_SPEC = specFromJson('{"inputs": {"00": {"00": 0.5, "11": 0.5}}}')

describe('spec parsing', () => {
  it('reads the tool format and derives shot counts', () => {
    expect(shotsForInput(BELL_SPEC, '00')).toBe(200)
    expect(() => shotsForInput(BELL_SPEC, '01')).toThrow(/no entry/)
  })

  it('rejects invalid specs', () => {
    expect(() => specFromJson('{nope')).toThrow(/JSON/)
    expect(() => specFromJson('{"inputs": {"0": {"0": 0}}}')).toThrow(/must be in/)
  })
})

describe('verdicts', () => {
  it('passes a balanced histogram', () => {
    const verdict = assess(BELL_SPEC, '00', new Map([['00', 100], ['11', 100]]), 0.01)
    expect(verdict.kind).toBe('pass')
    expect(verdict.statistic).toBe(0)
    expect(verdict.pValue).toBe(1)
  })

  it('flags a skewed histogram as wodf', () => {
    const verdict = assess(BELL_SPEC, '00', new Map([['00', 140], ['11', 60]]), 0.01)
    expect(verdict.kind).toBe('wodf')
    expect(verdict.statistic).toBeCloseTo(32, 10)
    expect(verdict.pValue!).toBeLessThan(0.01)
  })

  it('prioritizes unexpected outputs with the smallest witness', () => {
    const histogram = new Map([['00', 198], ['10', 1], ['01', 1]])
    expect(checkUof(BELL_SPEC, '00', histogram)).toBe('01')
    const verdict = assess(BELL_SPEC, '00', histogram, 0.01)
    expect(verdict.kind).toBe('uof')
    expect(verdict.witness).toBe('01')
    expect(verdict.statistic).toBeUndefined()
  })

  it('passes single-output specs after the uof check', () => {
    const spec = specFromJson('{"inputs": {"1": {"0": 1.0}}}')
    const verdict = assess(spec, '1', new Map([['0', 100]]), 0.01)
    expect(verdict.kind).toBe('pass')
    expect(verdict.statistic).toBeUndefined()
  })

  it('enforces the spec-derived shot count', () => {
    expect(() => assess(BELL_SPEC, '00', new Map([['00', 5]]), 0.01)).toThrow(/shots/)
  })
})
