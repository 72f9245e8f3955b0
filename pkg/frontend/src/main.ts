import { App } from "./app";
import "./style.css";

const root = document.getElementById("app");
if (root) {
  void App.boot(root);
}
