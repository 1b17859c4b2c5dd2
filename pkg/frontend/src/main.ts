import { ApiClient } from "./api.js";
import { ExplorerApp } from "./app.js";

const root = document.getElementById("app");
if (root) {
  const app = new ExplorerApp(root, new ApiClient());
  void app.start();
}
