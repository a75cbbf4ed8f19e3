import { defineConfig } from 'vitest/config'

// Used by render.test.ts to execute freshly generated test files in .tmp-gen/.
export default defineConfig({
  test: {
    include: ['.tmp-gen/**/*.test.ts'],
  },
})
