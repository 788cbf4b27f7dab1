import { defineConfig } from "vitest/config";

export default defineConfig({
  test: {
    environment: "node",
    include: ["tests/**/*.test.ts"],
    // the end-to-end test boots the Python service and builds real lattices
    testTimeout: 120_000,
    hookTimeout: 120_000,
  },
});
