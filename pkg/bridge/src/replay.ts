/**
 * Replay-manifest consumption: re-run a recorded test on the host simulator
 * and judge it with the harness's oracle logic, and render whole manifests
 * as host-side unit-test files.
 *
 * Rendered tests assert that the program behaves correctly (verdict
 * `pass`), not that the recorded verdict recurs: they are regression tests
 * that keep failing, witness included, until the program under test is
 * fixed. Host shot counts are seeded from the recorded seeds, so a rendered
 * file's outcome is reproducible run to run.
 */

import { createHash } from 'node:crypto'
import { readFileSync } from 'node:fs'
import { dirname, resolve } from 'node:path'

import { parseToolQasm, hostToToolBits, toolToHostBits } from './convention.js'
import { assess, specFromJson, type Verdict } from './oracle.js'
import { sampleShots } from './sim.js'

export interface ReplayCase {
  input: string // tool convention
  shots: number
  seed: number
  recordedVerdict: string
}

export interface ReplayManifest {
  circuitPath: string
  circuitSha256: string
  specPath: string
  specSha256: string
  alpha: number
  tests: ReplayCase[]
}

export function sha256(text: string): string {
  return createHash('sha256').update(text, 'utf-8').digest('hex')
}

export function loadManifest(manifestPath: string): {
  manifest: ReplayManifest
  circuitText: string
  specText: string
} {
  const raw = JSON.parse(readFileSync(manifestPath, 'utf-8')) as Record<string, unknown>
  const manifest: ReplayManifest = {
    circuitPath: String(raw.circuit_path),
    circuitSha256: String(raw.circuit_sha256),
    specPath: String(raw.spec_path),
    specSha256: String(raw.spec_sha256),
    alpha: Number(raw.alpha),
    tests: (raw.tests as Record<string, unknown>[]).map((t) => ({
      input: String(t.input),
      shots: Number(t.shots),
      seed: Number(t.seed),
      recordedVerdict: String(t.recorded_verdict),
    })),
  }
  const base = dirname(manifestPath)
  const circuitText = readFileSync(resolve(base, manifest.circuitPath), 'utf-8')
  const specText = readFileSync(resolve(base, manifest.specPath), 'utf-8')
  for (const [label, text, want] of [
    ['circuit', circuitText, manifest.circuitSha256],
    ['spec', specText, manifest.specSha256],
  ] as const) {
    const got = sha256(text)
    if (got !== want) {
      throw new Error(`${label} file hash mismatch: manifest records ${want}, file has ${got}`)
    }
  }
  return { manifest, circuitText, specText }
}

/** Re-run one recorded test on the host simulator and classify the result. */
export function replayCase(
  circuitQasm: string,
  specJson: string,
  testCase: ReplayCase,
  alpha: number,
): Verdict {
  const circuit = parseToolQasm(circuitQasm)
  const spec = specFromJson(specJson)
  const hostHistogram = sampleShots(
    circuit,
    toolToHostBits(testCase.input),
    testCase.shots,
    testCase.seed,
  )
  const histogram = new Map<string, number>()
  for (const [key, count] of hostHistogram) histogram.set(hostToToolBits(key), count)
  return assess(spec, testCase.input, histogram, alpha)
}

export interface RenderOptions {
  /** Module specifier the generated file imports the bridge from. */
  importFrom?: string
}

/** Render a replay manifest as a vitest unit-test file. */
export function renderUnitTests(manifestPath: string, options: RenderOptions = {}): string {
  const { manifest, circuitText, specText } = loadManifest(manifestPath)
  const importFrom = options.importFrom ?? 'qcomb-bridge'
  const lines: string[] = [
    '// Generated from a replay manifest; regenerate rather than edit.',
    "import { describe, expect, it } from 'vitest'",
    `import { replayCase, type ReplayCase } from ${JSON.stringify(importFrom)}`,
    '',
    `const CIRCUIT_QASM = ${JSON.stringify(circuitText)}`,
    `const SPEC_JSON = ${JSON.stringify(specText)}`,
    `const ALPHA = ${JSON.stringify(manifest.alpha)}`,
    '',
    `const CASES: ReplayCase[] = ${JSON.stringify(manifest.tests, null, 2)}`,
    '',
    "describe('replayed combinatorial tests', () => {",
    '  for (const testCase of CASES) {',
    '    it(`input ${testCase.input} behaves per spec' +
      ' [recorded: ${testCase.recordedVerdict}]`, () => {',
    '      const verdict = replayCase(CIRCUIT_QASM, SPEC_JSON, testCase, ALPHA)',
    "      const detail = verdict.witness !== undefined",
    '        ? `witness ${verdict.witness}`',
    '        : `p=${verdict.pValue}`',
    "      expect(verdict.kind, `verdict ${verdict.kind} (${detail})`).toBe('pass')",
    '    })',
    '  }',
    '})',
    '',
  ]
  if (manifest.tests.length === 0) {
    return [
      '// Generated from an empty replay manifest; regenerate rather than edit.',
      "import { describe } from 'vitest'",
      `import { replayCase } from ${JSON.stringify(importFrom)}`,
      '',
      "describe('replayed combinatorial tests (empty manifest)', () => {})",
      '',
    ].join('\n')
  }
  return lines.join('\n')
}
