/**
 * Bitstring-convention conversion and tool-format circuit I/O.
 *
 * Tool convention: position p of an input/output bitstring is the p-th
 * declared qubit, leftmost first. Host convention: little-endian, position
 * p counted from the right. The conversion is therefore a string reversal,
 * applied exclusively in this module so neither side ever sees the other's
 * convention.
 */

import { GATE_ARITY, ROTATION_GATES, type GateName, type HostCircuit, type HostOp } from './sim.js'

export const ENDIANNESS_NOTE =
  'host bitstrings are little-endian (position 0 rightmost); tool bitstrings ' +
  'list declared qubits left to right; conversion reverses each string'

export function toolToHostBits(bits: string): string {
  return [...bits].reverse().join('')
}

export function hostToToolBits(bits: string): string {
  return [...bits].reverse().join('')
}

const PRAGMA = /^\/\/ qucat inputs: (\d+(?:,\d+)*)$/

/**
 * Parse the tool's QASM subset into a host circuit.
 *
 * Measurements become measure ops with clbit = measure-statement order,
 * mirroring how the tool derives output positions.
 */
export function parseToolQasm(text: string): HostCircuit {
  let numQubits = 0
  let cregSize = 0
  let qregSeen = false
  let inputQubits: number[] | null = null
  const ops: HostOp[] = []
  let measureCount = 0

  const lines = text.split('\n')
  for (let lineno = 1; lineno <= lines.length; lineno += 1) {
    let line = lines[lineno - 1]
    const cut = line.indexOf('//')
    if (cut >= 0) {
      const comment = line.slice(cut).trimEnd()
      if (comment.startsWith('// qucat')) {
        const m = PRAGMA.exec(comment)
        if (!m) throw new Error(`line ${lineno}: malformed inputs pragma`)
        if (inputQubits !== null) throw new Error(`line ${lineno}: duplicate inputs pragma`)
        inputQubits = m[1].split(',').map(Number)
      }
      line = line.slice(0, cut)
    }
    line = line.trim()
    if (!line) continue
    if (!line.endsWith(';')) throw new Error(`line ${lineno}: missing ';'`)
    const stmt = line.slice(0, -1).trim()

    if (stmt.startsWith('OPENQASM') || stmt.startsWith('include')) continue

    let m = /^qreg\s+\w+\[(\d+)\]$/.exec(stmt)
    if (m) {
      if (qregSeen) throw new Error(`line ${lineno}: only one qreg is supported`)
      qregSeen = true
      numQubits = Number(m[1])
      continue
    }
    m = /^creg\s+\w+\[(\d+)\]$/.exec(stmt)
    if (m) {
      cregSize = Number(m[1])
      continue
    }
    m = /^measure\s+\w+\[(\d+)\]\s*->\s*\w+\[(\d+)\]$/.exec(stmt)
    if (m) {
      const qubit = Number(m[1])
      const clbitIndex = Number(m[2])
      if (clbitIndex >= cregSize) {
        throw new Error(`line ${lineno}: classical bit ${clbitIndex} out of range`)
      }
      ops.push({ name: 'measure', qubits: [qubit], clbit: measureCount })
      measureCount += 1
      continue
    }
    m = /^([a-z][a-z0-9]*)(?:\(([^)]*)\))?\s+(.+)$/.exec(stmt)
    if (m) {
      const name = m[1] as GateName
      if (!(name in GATE_ARITY)) throw new Error(`line ${lineno}: unknown gate ${m[1]}`)
      const qubits = m[3].split(',').map((arg) => {
        const qm = /^\s*\w+\[(\d+)\]\s*$/.exec(arg)
        if (!qm) throw new Error(`line ${lineno}: bad operand ${arg.trim()}`)
        return Number(qm[1])
      })
      const op: HostOp = { name, qubits }
      if (m[2] !== undefined) {
        if (!ROTATION_GATES.has(name)) throw new Error(`line ${lineno}: ${name} takes no angle`)
        op.angle = parseAngle(m[2], lineno)
      } else if (ROTATION_GATES.has(name)) {
        throw new Error(`line ${lineno}: ${name} requires an angle`)
      }
      ops.push(op)
      continue
    }
    throw new Error(`line ${lineno}: unrecognized statement '${stmt}'`)
  }

  if (!qregSeen) throw new Error('missing qreg declaration')
  if (inputQubits === null) throw new Error('missing inputs pragma')
  return { numQubits, inputQubits, ops }
}

function parseAngle(text: string, lineno: number): number {
  // decimal literals and multiplicative pi-expressions: pi/2, 3*pi/4, -pi
  let src = text.trim()
  let sign = 1
  while (src.startsWith('-') || src.startsWith('+')) {
    if (src[0] === '-') sign = -sign
    src = src.slice(1).trim()
  }
  const factors = src.split(/([*/])/).map((part) => part.trim())
  let value = sign * parseFactor(factors[0], lineno)
  for (let i = 1; i < factors.length; i += 2) {
    const rhs = parseFactor(factors[i + 1], lineno)
    value = factors[i] === '*' ? value * rhs : value / rhs
  }
  return value
}

function parseFactor(text: string, lineno: number): number {
  if (text === 'pi') return Math.PI
  const value = Number(text)
  if (!Number.isFinite(value) || text === '') {
    throw new Error(`line ${lineno}: bad angle term '${text}'`)
  }
  return value
}

/** Render a host circuit in the tool's QASM subset (17-significant-digit angles). */
export function emitToolQasm(circuit: HostCircuit): string {
  const measures = circuit.ops.filter((op) => op.name === 'measure')
  const gates = circuit.ops.filter((op) => op.name !== 'measure')
  const lines = [
    'OPENQASM 2.0;',
    'include "qelib1.inc";',
    `// qucat inputs: ${circuit.inputQubits.join(',')}`,
    `qreg q[${circuit.numQubits}];`,
    `creg c[${measures.length}];`,
  ]
  for (const op of gates) {
    const args = op.qubits.map((q) => `q[${q}]`).join(',')
    if (op.angle !== undefined) {
      lines.push(`${op.name}(${formatAngle(op.angle)}) ${args};`)
    } else {
      lines.push(`${op.name} ${args};`)
    }
  }
  const ordered = [...measures].sort((a, b) => a.clbit - b.clbit)
  ordered.forEach((op, position) => {
    lines.push(`measure q[${op.qubits[0]}] -> c[${position}];`)
  })
  return lines.join('\n') + '\n'
}

function formatAngle(angle: number): string {
  return angle.toPrecision(17) // always a form the tool parser accepts, round-trips float64
}
