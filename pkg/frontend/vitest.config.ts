import { defineConfig } from "vitest/config";

export default defineConfig({
  test: {
    environment: "jsdom",
    testTimeout: 60_000,
    hookTimeout: 60_000,
    // the suite drives one shared backend process; run files serially
    fileParallelism: false,
  },
});
