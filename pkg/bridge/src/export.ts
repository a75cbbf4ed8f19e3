/**
 * Export a host circuit into the tool's file formats: the QASM-subset text
 * and a spec JSON derived from the host simulator's exact distributions,
 * with every bitstring converted from host little-endian to the tool's
 * declared-order convention.
 */

import { emitToolQasm, hostToToolBits, ENDIANNESS_NOTE } from './convention.js'
import { exactDistribution, validateCircuit, type HostCircuit } from './sim.js'

export interface ExportRecord {
  qasmText: string
  specJson: string
  endiannessNote: string
}

const MAX_ENUMERATED_INPUTS = 12

/** All assignments in host convention, lexicographic. */
export function allInputAssignments(width: number): string[] {
  if (width > MAX_ENUMERATED_INPUTS) {
    throw new Error(`refusing to enumerate 2^${width} inputs; pass them explicitly`)
  }
  const rows: string[] = []
  for (let v = 0; v < 1 << width; v += 1) {
    rows.push(v.toString(2).padStart(width, '0'))
  }
  return rows
}

export function exportCircuit(
  circuit: HostCircuit,
  hostInputs?: string[],
): ExportRecord {
  validateCircuit(circuit)
  const inputs = hostInputs ?? allInputAssignments(circuit.inputQubits.length)
  const entries: Record<string, Record<string, number>> = {}
  for (const hostInput of inputs) {
    const dist = exactDistribution(circuit, hostInput)
    const converted: Record<string, number> = {}
    for (const key of [...dist.keys()].map(hostToToolBits).sort()) {
      converted[key] = dist.get(hostToToolBits(key))!
    }
    entries[hostToToolBits(hostInput)] = converted
  }
  const ordered: Record<string, Record<string, number>> = {}
  for (const key of Object.keys(entries).sort()) ordered[key] = entries[key]
  return {
    qasmText: emitToolQasm(circuit),
    specJson: JSON.stringify({ inputs: ordered }, null, 2) + '\n',
    endiannessNote: ENDIANNESS_NOTE,
  }
}
