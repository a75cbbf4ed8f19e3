#!/usr/bin/env node
/**
 * qcomb-bridge CLI.
 *
 *   qcomb-bridge export --circuit host.json [--inputs bits,...] --out-dir DIR
 *   qcomb-bridge validate --circuit host.json [--inputs bits,...]
 *   qcomb-bridge render --manifest replay.json --out FILE [--import-from SPECIFIER]
 *
 * Host circuits are JSON: {"numQubits": N, "inputQubits": [...],
 * "ops": [{"name": "h", "qubits": [0]}, ..., {"name": "measure",
 * "qubits": [0], "clbit": 0}]}. Input bitstrings on this CLI use the host
 * convention (little-endian).
 */

import { mkdirSync, readFileSync, writeFileSync } from 'node:fs'
import { join } from 'node:path'

import { crossValidate } from './cross-validate.js'
import { allInputAssignments, exportCircuit } from './export.js'
import { renderUnitTests } from './replay.js'
import type { HostCircuit } from './sim.js'

function parseArgs(argv: string[]): { command: string; flags: Map<string, string> } {
  const [command, ...rest] = argv
  const flags = new Map<string, string>()
  for (let i = 0; i < rest.length; i += 2) {
    const key = rest[i]
    if (!key.startsWith('--') || i + 1 >= rest.length) {
      throw new UsageError(`bad argument ${key}`)
    }
    flags.set(key.slice(2), rest[i + 1])
  }
  return { command: command ?? '', flags }
}

class UsageError extends Error {}

function required(flags: Map<string, string>, name: string): string {
  const value = flags.get(name)
  if (value === undefined) throw new UsageError(`--${name} is required`)
  return value
}

function loadHostCircuit(path: string): HostCircuit {
  return JSON.parse(readFileSync(path, 'utf-8')) as HostCircuit
}

function inputsFlag(flags: Map<string, string>, circuit: HostCircuit): string[] {
  const raw = flags.get('inputs')
  if (raw === undefined) return allInputAssignments(circuit.inputQubits.length)
  return raw.split(',')
}

export function cliMain(argv: string[]): number {
  try {
    const { command, flags } = parseArgs(argv)
    switch (command) {
      case 'export': {
        const circuit = loadHostCircuit(required(flags, 'circuit'))
        const record = exportCircuit(circuit, flags.get('inputs')?.split(','))
        const outDir = required(flags, 'out-dir')
        mkdirSync(outDir, { recursive: true })
        writeFileSync(join(outDir, 'exported.qasm'), record.qasmText)
        writeFileSync(join(outDir, 'exported.spec.json'), record.specJson)
        console.log(`wrote exported.qasm and exported.spec.json to ${outDir}`)
        console.log(`note: ${record.endiannessNote}`)
        return 0
      }
      case 'validate': {
        const circuit = loadHostCircuit(required(flags, 'circuit'))
        const report = crossValidate(circuit, inputsFlag(flags, circuit))
        for (const entry of report.perInput) {
          console.log(`input ${entry.input}: TVD ${entry.tvd.toExponential(3)}`)
        }
        console.log(`max TVD: ${report.maxTvd.toExponential(3)}`)
        return report.maxTvd <= 1e-9 ? 0 : 1
      }
      case 'render': {
        const text = renderUnitTests(required(flags, 'manifest'), {
          importFrom: flags.get('import-from'),
        })
        writeFileSync(required(flags, 'out'), text)
        console.log(`wrote ${flags.get('out')}`)
        return 0
      }
      default:
        throw new UsageError(
          `unknown command ${command || '(none)'}; expected export|validate|render`,
        )
    }
  } catch (err) {
    if (err instanceof UsageError) {
      console.error(`usage error: ${err.message}`)
      return 2
    }
    console.error(`error: ${err instanceof Error ? err.message : String(err)}`)
    return 2
  }
}

const entry = process.argv[1] ?? ''
if (entry.endsWith('cli.js') || entry.endsWith('cli.ts') || entry.endsWith('qcomb-bridge')) {
  process.exit(cliMain(process.argv.slice(2)))
}
