/**
 * Cross-validate the host simulator against the harness: both sides compute
 * the exact output distribution of the same exported circuit, the harness
 * through its `derive-spec` CLI, and the results are compared by total
 * variation distance per input.
 */

import { spawnSync } from 'node:child_process'
import { mkdtempSync, rmSync, writeFileSync } from 'node:fs'
import { tmpdir } from 'node:os'
import { join } from 'node:path'

import { hostToToolBits } from './convention.js'
import { exportCircuit } from './export.js'
import { exactDistribution, type HostCircuit } from './sim.js'

export interface CrossValidationReport {
  maxTvd: number
  perInput: { input: string; tvd: number }[]
}

export function qcombBinary(): string {
  return process.env.QCOMB_BIN ?? 'qcomb'
}

/** Run the harness CLI; returns stdout, throws on nonzero exit. */
export function runQcomb(args: string[]): string {
  const result = spawnSync(qcombBinary(), args, { encoding: 'utf-8' })
  if (result.error) {
    throw new Error(`failed to run ${qcombBinary()}: ${result.error.message}`)
  }
  if (result.status !== 0) {
    throw new Error(
      `${qcombBinary()} ${args.join(' ')} exited ${result.status}: ${result.stderr}`,
    )
  }
  return result.stdout
}

export function totalVariationDistance(
  a: Map<string, number>,
  b: Map<string, number>,
): number {
  const keys = new Set([...a.keys(), ...b.keys()])
  let sum = 0
  for (const key of keys) sum += Math.abs((a.get(key) ?? 0) - (b.get(key) ?? 0))
  return sum / 2
}

/**
 * Compare exact distributions for the given host-convention inputs
 * (defaults to the exported spec's inputs). Tool-convention keys throughout.
 */
export function crossValidate(
  circuit: HostCircuit,
  hostInputs: string[],
): CrossValidationReport {
  const record = exportCircuit(circuit, hostInputs)
  const dir = mkdtempSync(join(tmpdir(), 'qcomb-bridge-'))
  try {
    const circuitPath = join(dir, 'exported.qasm')
    writeFileSync(circuitPath, record.qasmText)
    const toolInputs = hostInputs.map(hostToToolBits)
    const stdout = runQcomb([
      'derive-spec',
      '--circuit',
      circuitPath,
      '--inputs',
      toolInputs.join(','),
    ])
    const harness = JSON.parse(stdout) as { inputs: Record<string, Record<string, number>> }
    const perInput: { input: string; tvd: number }[] = []
    for (let i = 0; i < hostInputs.length; i += 1) {
      const hostDist = exactDistribution(circuit, hostInputs[i])
      const mine = new Map<string, number>()
      for (const [key, p] of hostDist) mine.set(hostToToolBits(key), p)
      const theirs = new Map(Object.entries(harness.inputs[toolInputs[i]] ?? {}))
      perInput.push({ input: toolInputs[i], tvd: totalVariationDistance(mine, theirs) })
    }
    return { maxTvd: Math.max(...perInput.map((e) => e.tvd)), perInput }
  } finally {
    rmSync(dir, { recursive: true, force: true })
  }
}
